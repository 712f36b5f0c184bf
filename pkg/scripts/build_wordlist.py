#!/usr/bin/env python3
"""Build the bundled dictionary (src/blockwords/data/words.tsv).

Hand-curated common English words, 3-8 letters, grouped into zipf-style
frequency bands (zipf = log10 of frequency per billion words). The emitted
frequency column is the plain fraction 10**(zipf - 9). Duplicates keep the
highest band. Run from the repository root:

    python3 scripts/build_wordlist.py
"""

from __future__ import annotations

from pathlib import Path

BANDS: dict[float, str] = {
    6.2: "the",
    6.0: """
        and for are but not you all can had her was one our out day get has
        him his how man new now old see two way who did its let put say she
        too use
    """,
    5.6: """
        that with have this will your from they know want been good much some
        time very when come here just like long make many more only over such
        take than them then were what
    """,
    5.2: """
        about after again also always another any around back because before
        between both call came could down each even every find first give
        going great hand help high home house into keep kind last left life
        little live look made mean most move much must name need never next
        night often once open other our own part people place play point
        right same says school seem short show side small sound spell still
        such sure tell thing think those three through today together told
        took turn under until upon very want water well went were what where
        which while white whole will wish word work world would write year
        young
    """,
    4.8: """
        above across add against age ago air almost alone along already
        although among animal answer anything appear area ask away baby bad
        ball bank base beauty became become bed began begin behind being
        believe below best better big bird black blue board boat body book
        born bottom box boy break bring brought brown build built business
        buy car care carry case catch cause center change check child
        children city class clean clear close cold color common company
        complete consider contain control cost country course cover create
        cross cry cut dark decide deep did different dinner direct dog done
        door draw dream dress drink drive drop dry during early earth east
        easy eat else end enough enter even evening ever example except eye
        face fact fall family far farm fast father fear feel feet fell felt
        few field fight figure fill final find fine fire fish fit five floor
        fly follow food foot force form found four free friend front full fun
        game gave get girl glass gold gone got grand grass green ground group
        grow grew guess had half hall happen happy hard head hear heard heart
        heat heavy held hill history hit hold hope horse hot hour however
        human hundred husband idea inch indeed inside instead island job join
        just keep kept key kill king knew lady lake land large late laugh
        lay lead learn least leave left leg less letter level light like line
        list listen long longer look lost lot loud love low made main major
        man map mark matter may maybe mean meet member men might mile milk
        mind mine minute miss moment money month moon more morning most
        mother mountain mouth music music name near nearly need news nice
        night nine north nose note nothing notice now number ocean off offer
        office old once one only open order other out outside over own page
        paid pain paper parent part party pass past pay people per perhaps
        person pick picture piece place plan plane plant play please point
        poor power press pretty price probably problem produce public pull
        push question quick quiet quite race rain raise ran rather reach read
        ready real really reason red remain remember rest result return rich
        ride ring rise river road rock role room round rule run sail salt
        same sand sat saw say sea season seat second see seed seem seen sell
        send sense sent serve set seven several shall shape share ship shoe
        shop short should shoulder show shown sign simple since sing single
        sister sit situation six size sky sleep slow small smile snow social
        some someone song soon sort sound south space speak special speed
        spend spoke sport spring stage stand star start state station stay
        step stood stop store story street strong student study subject
        summer sun support suppose surface system table tail talk tall teach
        team tell ten term test than thank that their theory there these they
        thing think third thirty this those though thought thousand through
        thus time tiny today toward town trade travel tree tried true try
        turn twenty two type under unit until use usual value various view
        voice wait walk wall want war warm watch wave week weight west wheel
        when whether white who whose why wide wife wild win wind window wing
        winter wish within without woman women wood word wore work world
        worry would write wrote yard yes yet young your
    """,
    4.4: """
        able accept account act action active actor actual admit adult advice
        afford afraid agent agree ahead allow amount anger angle angry
        announce annual apart apple apply april argue arm army arrive art
        article artist assume atom attack attempt author autumn average avoid
        award aware badly bag ban bar barely basic basis battle bear beat
        begun bell belong belt bench bend benefit beside bet beyond bill bit
        bite bitter blame blank blind block blood blow bone border bottle
        bought bound bowl brain branch brave bread breath brick bridge brief
        bright broad broke brother budget burn bus bush busy butter button
        cake camera camp campus cancer candy cap capital captain card career
        careful cat cell chain chair chance chapter charge chart chase cheap
        cheese chest chief choice choose chose church circle citizen civil
        claim climb clock cloth cloud club coach coal coast coat code coffee
        collect college column combine comfort command comment commit
        compare compete concern conduct confirm connect contact contest
        context convert cook cool copy core corn corner correct cotton could
        count couple courage court cousin crazy cream credit crew crime
        critic crop crowd crucial cultural culture cup current curve customer
        cycle daily damage danger dare data date dead deal dear death debate
        debt decade declare deer defense define degree deliver demand deny
        depend depth derive design desire desk detail device dig dinner
        discuss disease dish distant divide doctor document dollar domestic
        double doubt dozen drama drew drug due dust duty each eager ear earn
        easily eastern edge editor effect effort egg eight either elect
        element eleven ельse emerge emotion employ empty enable energy engage
        engine enjoy enormous ensure entire entry equal error escape
        especial essay estate estimate ethnic evil exact examine exceed
        excel exist exit expand expect expert explain explore expose express
        extend extent extra fail fair faith familiar famous fan fancy fat
        fate fault favor feature federal fee feed fellow female fence fewer
        fiction fifteen fifth fifty film finally finance finger finish firm
        fixed flag flat flavor flesh flight flow flower focus folk forest
        forget formal format former forth fortune forty forward frame
        freedom fresh fruit fuel function fund future gain galaxy gap garden
        gas gate gather gender gene general gentle gift glad global goal
        golden grab grade grain grant gray grew growth guard guest guide gun
        guy habit hair hang happy harm hat hate heading health hello hence
        hero herself hide himself hint hire hole holy honest honor hope
        hotel huge hurt ice ideal identify image imagine impact imply
        improve include income index industry initial injury inner insect
        insist intend interest internal invest invite involve iron issue
        item jacket joke journal journey joy judge juice jump junior jury
        justice keen khaki kick kid kitchen knee knife knock label labor
        lack language lap laptop largely laser latter launch law lawyer
        layer leader leaf league lean leather lecture legal lemon length
        lesson lie lift limit link lip liquid literary loan local locate
        lock long loose lose loss lower lucky lunch lung machine mad
        magazine mail manage manner march margin market mass master match
        material math matter meal measure meat medical medium meeting melt
        mental menu mere mess message metal method middle might mild
        military million minor mirror mission mistake mix mixture mобile
        mode model modern modest module monitor monkey moral moreover
        mostly motion motor mount mount mouse movie murder muscle museum
        mutual myself mystery nail narrow nation native natural nature neck
        need negative neither nerve net network newly nobody nod noise none
        normal nothing novel nuclear nurse nut obtain obvious occupy occur
        odd odds offense official oil okay onion online only onto opinion
        oppose option orange organ origin other ought ounce outcome output
        oven overall owner oxygen pace pack package pad paint pale palm
        panel pants parent park partner passage passion patch path patient
        pattern pause peace peak pen penalty pepper perform period permit
        phase phone photo phrase physical piano pie pile pilot pine pink
        pipe pitch plain planet plastic plate platform plenty plot plus
        pocket poem poet poetry police policy polite poll pool popular
        portion pose positive possible post pot potato pound pour powder
        praise pray predict prefer premise prepare presence present
        preserve pressure prevent previous pride primary prime print prior
        prison private prize process product profile profit program project
        promise promote prompt proof proper propose protect protein proud
        prove provide purpose pursue put quality quarter queen quote radio
        rail random range rank rapid rare rate ratio raw reader reality
        refer reflect reform refuse regard regime region regular reject
        relate relief rely remove rent repeat reply report request require
        rescue research reserve resist resource respect respond rest
        restore retain retire reveal review reward rhythm rice rid rifle
        ринг risk rival rob robot rough route routine row royal rub rural
        rush sad safe salad sale sample satisfy sauce save scale scene
        schedule scheme scholar science scope score scream screen script
        search secret section sector secure seek seize select self senior
        sequence series serious serve session settle severe shade shadow
        shake shall shame shark sharp sheet shelf shell shelter shift shine
        shirt shock shoot shore shot shout shut sick sight silent silver
        similar simply sink site skill skin slave slice slide slight slip
        smart smell smooth soccer society soft soil solar sold soldier
        solid solve somehow soon sorry soul source speech spin spirit split
        spot spread square staff stake stamp standard stare status steady
        steal steel stick stiff stir stock stomach stone storage storm
        strange stream stress stretch strike string strip stroke structure
        struggle stuff stupid style succeed success sudden suffer sugar
        suggest suit sum supply surely survey survive suspect sweep sweet
        swim switch symbol table tackle tactic tale talent tank tap tape
        target task taste tax tea teacher tear tech tendency tender tennis
        tension tent текст textile texture theme therapy thick thin threat
        throat throw ticket tie tight till tip tissue title tone tongue
        tool tooth topic total touch tough tour toward tower track
        tradition traffic trail train transfer treat trend trial trick
        trip troop trouble truck trust truth tube tune tunnel twelve twice
        twin uncle unique universe unless untouch upper urban urge useful
        user usually valley vast vehicle venture version versus very vessel
        veteran victim video village violent virtue visible vision visit
        visual vital vitamin volume vote wage wake wander wash waste weak
        wealth weapon wear weather web wedding weekend weird welcome
        western wet whatever wheat whenever wherever whisper widely
        widespread wild willing wine wire wisdom wise withdraw witness
        wonder wooden worker worth wound wrap yellow yesterday yield youth
        zone
    """,
    4.0: """
        absorb abuse acid acre adapt adjust admire adopt advance adverse
        agenda aid aim alarm alert alien alike alive alley ally aloud alter
        amber amuse anchor ancient ankle антenna anxious apology appeal
        arena arise arrow ash aside aspect assert asset assign assist
        atomic attach attend attract auction audio aunt aura auto awake
        awful axis bacon badge bait bake balance bald ballet balloon bamboo
        banana band bang banner bare bargain bark barn barrel barrier
        basket batch bath bay beach beam bean beard beast beef beer begin
        belly beloved berry bias bicycle bid bind biology birth blade blast
        blend bless blink bloom blouse blur boast bold bolt bomb bond bonus
        boost boot booth bounce bow bowl brake brand brass breed breeze
        brew bronze broom brush bubble bucket buddy buffalo bug bulb bulk
        bull bundle burden burst bury cab cabin cable cactus cage calm
        canal candle cannon canoe canvas canyon carbon cargo carpet cart
        carve casino cast castle casual cave cease cement census chalk
        chamber champion channel chant chaos charm charter cheek cheer
        cherry chew chicken chill chin chip choir chop chorus chrome chunk
        cigar cinema circuit cite civic clap clash clause claw clay clerk
        click cliff clinic clip cloak clone cluster clutch coal coin
        collar colony combat comic compact compound compute conceal concept
        concert conclude concrete conference confess conflict confront
        confuse congress connect conquer conserve consist constant
        construct consult consume contend content contract contrast
        convince cope copper coral cord corps costume cottage cotton couch
        cough council counsel counter county coup course craft crash crawl
        credit creek crisp critic crown cruise crunch crush crystal cube
        cue cuisine cult cure curl custom cute dairy dam damp dash dawn
        deadline deaf debut decay decent deck decline decorate decrease
        dedicate defeat defect defend deficit degree delay delete delicate
        delight demon дense dental depart deposit derive descend desert
        deserve despite dessert destroy detect device devote diagram dial
        diary dice dictate diet differ digital dignity dilemma dime
        diminish dine dinosaur dip diploma直 disagree disaster discount
        discover dismiss disorder display dispute distance distinct
        distress district disturb dive diverse divine dock doll domain
        donate donkey donor dose dot drag dragon drain drift drill drown
        drum duck dumb dump dune duo durable dusk eager eagle earnest ease
        echo eclipse ecology edit educate eerie ego elbow elder elegant
        elite embrace emerald emission empire enact encounter endless
        endorse endure enforce engineer enhance enlist enrich enroll
        ensemble entity entrance envelope еnvy episode equip erase erect
        erode erupt essence estate eternal ethics evident evoke evolve
        exam exceed exchange excite exclude excuse execute exempt exert
        exhaust exhibit exile expense explode exploit export extract
        extreme fabric facade fade faint fairy fame fantasy fare fatal
        fatigue favor feast feather ferry fever fiber fierce fiery
        filter fin firearm fiscal fist flame flare flash fleet flexible
        flip float flock flood flour fluid flush foam fog fold forbid
        forecast forge formula fort forum fossil foster foul fountain fox
        fraction fragile fragment frank fraud freeze frequent frog
        frontier frost frown frozen fury fusion gadget gala gallery
        gallon gamble gang garage garbage garlic garment gaze gear gem
        genre gentle genuine gesture ghost giant ginger giraffe glance
        gland glare gleam glide glimpse glitter gloom glory glove glow
        glue golf gospel gossip govern gown grace graph grasp grave
        gravity graze grease greet grid grief grill grin grind grip
        grocery gross guilt guitar gulf gut habitat hail hammer handle
        handy harbor harsh harvest hatch haul haven hazard headline heal
        heap hectare hedge heel herb herd hesitate hidden highway hike
        hip hockey hollow homage hook hoop hop horizon horn hostile hub
        hug humble humor hunger hunt hurdle hurry hybrid hydrogen hymn
        icon identity idle idol ignite ignore illegal illness imagine
        immense immune import impose impress impulse incident indoor
        induce indulge infant infect inflate inform inhabit inherit
        inhibit inject inland inmate input inquiry insert insight inspect
        inspire install instant insult insure intact intake integral
        intense interact interval intimate invade invent inverse invoke
        island isolate jail jar jazz jealous jeans jet jewel job jog
        joint jolly journal judge jug juggle jungle junk kangaroo kayak
        kernel kettle keyboard kidney kingdom kiss kit kite kitten koala
        lab ladder lamb lamp lane lantern lapse latch latin latter lava
        lawn lazy leak leap lease legacy legend lens leopard лever
        liberal liberty license lid lifetime lime limp linen linger
        lion litter lively liver lizard lobby lobster lodge loft log
        logic lonely lord lottery lounge loyal lumber lump lunar lure
        lyric magic magnet maid mammal mandate mango mansion manual
        maple marble mare marine marsh mask mason mate matrix mature
        meadow medal media melody member memory mentor mercy merge merit
        merry metro midst might migrate mimic mineral mingle minimal
        minister miracle mist mixture mob mock mole molten momentum monk
        monster moose morale moss motive mud mule multiply mural muse
        mushroom mustard mute mutter mutton myth naive naked nap напkin
        nasty naval navy nectar needle neglect neighbor nephew nest
        neutral niche nickel niece noble node nominee noodle norm
        notable notify notion nylon oak oasis oath obey object oblige
        observe obstacle occasion октave odor offend offset olive omen
        omit opera oppose oral orbit orchard ordeal organic orient
        ostrich otter outer outfit outlet outlook output oval овation
        overcome overlap overseas owl oyster pace paddle pagan pageant
        palace panda panic parade parcel pardon parlor parrot partial
        pastel pastor pasture patent patio patrol patron peanut pearl
        pedal peer pelican pen pencil penguin pension perceive perch
        peril permit persist pet petal petition petty pharmacy photon
        pickle picnic pier pigeon pillar pillow pinch pioneer pirate
        pistol piston pit pity pixel pizza plague plank plaza plead
        pledge plug plum plumber plunge poison poke polar pole pollen
        pond pony porch pork portal porter poster posture pouch poverty
        powder prairie preach precise predator premium presume pretend
        prevail prey priest primal probe proceed proclaim prohibit
        prolong pronoun prophet prose prosper protest proverb province
        proxy prudent pulse pump punch pupil puppet puppy purse pursuit
        puzzle pyramid quaint quake quarrel quartz quest quilt quiz
        rabbit raccoon rack radar radiant radical rage raid rally ramp
        ranch rant rash rattle ravine ray razor realm reap rebel recall
        receipt recite reckon recruit rectangle recur reed reef reel
        refine refuge regret rehearse reign rein relax relay relic
        relish reluct remark remedy remind remote render renew repair
        reptile reside residue resign resolve resort restrain resume
        retail retreat reunion revenge revenue reverse revive revolt
        ribbon ridge ridicule rig rim riot ripe ripple rite ritual
        roam roar roast robe robust rocket rod rodent romance roof
        rooster root rope rot rotate rotten rubber rug ruin rumor rust
        sack saddle saga sage saint sake salmon salon salute salvage
        sanctuary sane satire sauce sausage savage scan scandal scar
        scarce scarf scatter scent scissors scold scoop scooter scorn
        scout scrap scratch scroll scrub sculpt seal seam seminar
        senate sensor sentence serene sergeant sermon serpent serum
        settle sew shabby shaft shallow shampoo shatter shear shed
        sheep sheer shepherd sheriff shield shimmer shiver shrewd
        shriek shrimp shrine shrink shrub shrug shuttle shy sigh
        signal silk sill silly sincere sinew siren sketch ski skirt
        skull slab slam slang slap sleeve slender slim slogan slope
        sloth smash snack snail snake snap snatch sneak sniff soak
        soap soar sob sober sock soda sofa solemn solo sonic sore
        sorrow spare spark sparrow spawn spear species specimen
        spectrum spell sphere spice spider spike spill spine spiral
        spite splash splendid sponge spoon spouse sprain sprawl spray
        sprint sprout spur spy squad squash squat squeeze stab stable
        stadium stag stain stairs stale stalk stall stance staple
        starch stark starve stash static statue stature stem stern
        stew steward sting stink stitch stool stoop strain strand
        strap straw stray stride strife stroll stub stubborn studio
        stumble stump stun sturdy subdue submit subsidy subtle suburb
        succumb suck sue suite sulfur summit summon sunset superb
        supreme surge surplus surround suspend sustain swallow swamp
        swan swap swarm sway swear sweat swell swift swing sword
        syllable symptom syndrome syrup tablet taboo tame tan tangle
        tariff tart taxi teak tease temper template temple tempt
        tenant terrace terrain terror thaw theft thesis thief thigh
        thorn thread thrift thrill thrive throne thrust thumb thunder
        tick tide tiger tile tilt timber timid tin tinker tint
        toast toddler toe toll tomato tomb torch tornado torso toss
        tourist tow toxic toxin toy trace tractor tragedy trait
        trance transit trap tray treason treasure treaty tremble
        trench tribal tribe tribute trigger trim trio triumph
        trolley trophy tropical trout truce trumpet trunk tuition
        tulip tumble tumor tuna turbine turf turkey turtle tusk
        tutor tweak twig twist tycoon udder ultimate umbrella umpire
        unanimous unaware uncover undergo undermine underway unfold
        unify unite unlock unrest unveil upbeat upcoming update
        upgrade uphold uplift upload upright uprising upset upstream
        uptown urgent usage utensil utility utmost utter vacuum vague
        vain valid валor vapor variant varsity vault vector velvet
        vendor venom vent venue verb verdict verge verify verse
        vertical vessel vest veto viable vibrant vice victory vigil
        villa vine vinegar vintage vinyl viola violet viper viral
        virus visa vivid vocal vogue void volcano volley voltage
        vomit vow voyage wagon waist waiver walnut walrus waltz
        wander ward wardrobe ware warrant warrior wart wasp weary
        weave wedge weed weep weigh weld welfare whale wharf wheeze
        whim whine whirl widow width wield wig wilderness willow wilt
        wince winch wink wipe wit wizard wolf womb worm worship
        worthy woven wreck wrench wrestle wrinkle wrist yacht yarn
        yawn yearn yeast yoga yogurt yolk zeal zebra zenith zero
        zigzag zinc zipper zoom
    """,
    3.5: """
        abide ablaze abound abrupt absurd acclaim acorn adept adore adrift
        afar affix aft agile ail ajar akin alas albeit ale alga alias
        alibi align alkali allot allure aloe aloft aloof altar amber amend
        amid amiss ample amulet anew angler anguish anis ankle годannex
        anoint antic anvil apex aplomb appال apron apt arc ardent ardor
        arid ark armor aroma arson ascent askew asp aspen assail astray
        atlas atop attic auburn audit auger augment aunt aura austere
        avail avert avid awe awning awry axe axle azure babble badger
        baffle bale balk ballad balm bane banjo banter barb bard barge
        bask bass baste bat batter bauble bawl bazaar beacon bead beak
        beckon bedlam beech befall beget belch belle bellow bemuse
        berate beret berth beset bestow bevel bewilder bicker bile
        billow bin birch bison bisque blaze bleach bleak bleat bled
        bleed blemish blight bliss blitz blob bloc blot bluff blunder
        blunt blurt blush boa boar bode bog bogus boil bolster bonfire
        bonnet boon bore borne borough bosom botany bother bough bout
        bovine brawl bray brazen breach brisk brittle broach brooch
        brood brook brute buck bud budge buff bulge bun bunch bungle
        bunk bunny buoy burly burrow bust bustle butte buzz byte cackle
        cadence cadet calf caliber calico camel cameo can канyon caper
        capsule carat caress carol carp cascade cask casket cater
        cavern cavity cedar cellar chafe chaff chalice chap char chard
        chariot chasm chaste chat cheat chess chide chime chirp chive
        choke chord chore chuck chuckle chug churn chute cider cinch
        cipher citrus clad clam clamor clamp clan clang clank clasp
        cleanse cleft clench clergy cleric clever cling clinch cloak
        clog clot clove clown cluck clue clump clumsy coax cob cobalt
        cobra cocoa cocoon cod coddle cog coil coke colt coma comet
        commend commune compel comply compose compress comrade con
        concur condone conduit confide confine conform congest conifer
        console consort contour convene convex convey convict convoy
        coo cook coop coot cord cork cosmic cosmos cot cove covet cow
        cower coy cozy crab crag cram cramp crane crank crate crater
        crave craze creak credence creed creep cремation crescent
        cress crest crevice crib cricket crimson cringe croak crochet
        crock crook croon crouch crow crude crumb crumble crusade
        crust crypt cradle cub cubicle cuddle cuff culprit cultivate
        cunning curb curd curfew curio curt curtail cusp cymbal cynic
        dab dabble dagger dainty dally dandy dank dapper dart daub
        daunt dazzle deacon dearth debris decree deduce deed deem
        defer deft defy deity dell delta delude deluge delve demean
        demise demure den denim denote dent deplete deplore deploy
        depot derail deride descent desist despair despise dew
        diagnose dialect dictum differ dill dim dimple din dingy
        dire dirge disc discard discreet disdain disgust dish dismal
        dispel display дissent dissolve distill ditch ditto ditty
        diver divert divulge dизzy docile dodge doe dole dolphin
        dome doom dormant dote dough dour douse dove dowel down
        drab drape dread dreary dredge dregs drench drone drool
        droop drowsy drudge dub dud dugout dull dummy dumpling dun
        dusky dwell dwarf dye dyke dynamo earful earl earthen easel
        eave ebb ebony eddy edible edict edifice eel eerie effigy
        egret eject eke elapse elate elegy elf elk elm elope elude
        embark ember emblem embody emboss embryo emit empower enamel
        enchant encore endear endow enema enigma enlarge enliven
        ennui enrage ensue entail entice entwine envoy epic epoch
        equate equator equity era ergo ermine errand erratic escort
        essay etch ether ethos evade evict ewe exalt excerpt exclaim
        excrete exodus exotic expanse expend expire expound exquisite
        extant extol exude exult eyelash eyelid fable fad faction
        faculty fake falcon falter famine fang farce fascinate fast
        fathom fatten faun fauna fawn feat feeble feign feint feline
        fend feral ferment fern fervent fervor fester festive fetch
        fetish fetter feud fiasco fib fickle fiddle fidget fief fig
        figment filch file filial filly filth finch finesse fink fir
        fissure fixture fjord flail flair flake flank flap flaunt
        flaw flay fleck flee fleece flick flinch fling flint flirt
        flit flora floral florist floss flounder flout fluff fluke
        flunk flute flutter flux foal foe foggy foil foliage folly
        fond fondle font fool forage foray ford forfeit forgo fork
        forlorn fort forte fortify fray freak freckle frenzy fret
        friar frill fringe frisk fritter frivolous fro frock frolic
        frond frugal fudge fumble fume fungus funnel furl furnace
        furrow furtive fuse fuss futile fuzz gab gable gaff gag
        gait gale gall gallant galley gallop galore gamut gander
        gape garb garish garland garner garnish gash gasp gaudy
        gauge gaunt gavel gawk geese gel gelatin genesis genial
        gent germ geyser giddy gild gill gilt gimmick gin gird
        girder girth gist glade gladiator glaze glean glee glen
        glib glimmer glint gloat glob globe glossy glut glutton
        gnarl gnash gnat gnaw gnome goad goat gobble goblet goblin
        godsend gong goose gore gorge gorilla gory gosling gouge
        gourd gourmet gout grackle graft granite grapple grate
        gratify gravel grim grime grit groan groggy groin groom
        groove grope grotto grouch grove growl grub grudge gruel
        gruff grunt guile guise gull gulp gush gust gutter guzzle
        gypsum hack haggle hale hallow halt halve ham hamlet hamper
        hare hark harp harpoon harrow hart hash hasten hasty hatchet
        haughty haunt hawk hay haze hazel hearth heath heave hectic
        hedgehog heed hefty heifer heinous heir helm helmet hemp hen
        herald hermit heron hew hex heyday hiccup hinge hiss hive
        hoard hoarse hoax hobble hog hoist homely hone honk hood
        hoof hoot horde hornet hose hostage hound hove hovel hover
        howl hue huff hulk hull hum humane humid hush husk husky
        hut hutch hydra hyena hygiene icicle idiom idiot igloo
        ignoble ilk imbue immerse impair impart impede impel imperil
        impish impute inane inapt incense inch incite incline incur
        indent indict inept inert infer infest inflict infuse ingot
        inhale inject injure ink inlay inlet inn innate insane
        inscribe insignia intone inundate inure invalid inventor
        irate ire iris irk irrigate итch ivory ivy jab jackal jade
        jagged jam jargon jaunt javelin jaw jay jeer jelly jerk
        jersey jest jib jibe jig jilt jinx jockey jostle jot jovial
        jowl jubilee jumble jut jute keel keg kelp ken kennel kettle
        khaki kiln kilt kimono kin kindle kink kiosk kiwi knack
        knave knead kneel knell knit knob knoll knot kudos lace
        lackey lad laden ladle lag lagoon lair lament lance languid
        lanky lapel larch lard lark larva lash lasso latent lathe
        lather latitude lattice laurel lavish leach leaden leaflet
        leash ledge leech leek leer legion legume lemur lend lentil
        lest lethal levee levy liable liaison libel lichen lick
        lilac lilt lily limb limber limbo limerick lime limp linger
        lint lisp listless lithe litmus liven livid llama load loaf
        loam loath lobe locust lode lofty loiter loll loom loon
        loop loot lop lope lore lotion lotus lounge louse lout
        lozenge lucid lull lumen lump lunge lurch lure lurid lurk
        lush lustre lute lye lynx madden madam maggot magma magnify
        magnolia magpie maim malice mallet malt mane mange mangle
        manor mantle mar marauder marrow marvel mash mast mastiff
        matron maul maxim mayhem maze meander meek meld mellow
        menace mend menial mercury mermaid mesh mesmerize mete
        meteor mettle mew milder mildew milestone milli mime mince
        minnow mint minute mirage mirth miser mishap mite mitten
        moan moat mobilize mocking mod modem moist molar mold
        molecule mollify molt monarch mongrel moot mop mope morbid
        morsel mortal mortar mosaic mosque moth motif motto mound
        mourn mow mulch mull mumble mumps munch mundane mural murky
        murmur musk musket muslin muss must muster musty mutate
        muzzle myriad nag narrate nave navel nay neigh neon nestle
        nettle newt nib nibble nifty nimble nip nit nitrogen nobble
        nocturnal noose notch nougat nourish novice nozzle nuance
        nub nude nudge nugget null numb nun nuptial nurture nuzzle
        nymph oaf oat obese oblong oboe obscure obsolete obtuse ода
        ode ogle ogre oink ointment omega onion onset onyx ooze
        opaque opine opossum oracle orator orc orchид ordain ore
        organism oriole ornate orphan oscillate osmosis ottoman
        oust outcast outcry outdo outlaw outpost outrage overt
        owe ox oxide pact paddock padre pail palate pall pallet
        pallid palms paltry pamper pane pang pantry papal par
        parable parch pare parity parka parley parody parse
        pastime pasty pat pate pathos patter paunch pave paw
        pawn pea peal pebble peck peculiar peddle pedigree peek
        peel peep peeve pelt pendant pending pendulum penny pent
        peon peony pep perk perjury perky permeate perpetual
        perplex pert peruse pest pester pestle phantom phoenix
        pick picket pickup piety pig pike pile pilfer pilgrim
        pill pillage pimple pincer pinnacle pint pious pip piper
        pique pitfall pith pivot placard placid plaid plait
        plaque plaster plateau platter pleat plight plod plop
        ploy pluck plume plump plunder ply poach pod podium
        poignant pойnt poise poker pomp ponder pore porous
        porridge portray posh posse pothole potion potter pout
        pox prance prank prattle prawn preen prelude premonition
        presto prowl prim primp prance pristine privy probing
        prod prodigy profane профess prompt prong prop propel
        prow prune pry psalm pucker pudding puddle puff pug pun
        pung punt puny pup pupa purge purr pus путty pyre python
        quack quadrant quagmire quail qualm quench query quibble
        quill quip quirk quiver quota rabid rabble radius raffle
        rafter rag rake ram ramble rampant rancid rang rangy
        ransack ransom rap rapt rasp raspy rat rave ravel raven
        ravish reck recluse recoil recourse rectify redeem reek
        refrain refract regal regalia rejoice relapse relent
        remit remnant remorse renown repent repose repress
        reprieve reproach repute resent reside resin retort
        retrace retract revel revere revert revoke rhyme rib
        rick ricochet rift rile rind rink rinse rip rips risque
        rivet roach rob robin rogue romp rook roost rosary rosy
        rote rouse rout rove rower rub rubble rubric rudder rue
        ruffle rug rumble rummage rump rundown rune rung runt
        ruse rustic rustle rut ruthless saber sable sack sacred
        sag sago sail sallow salve samba sap sapling sash sassy
        satchel sate satin saunter savor savvy saw sax scab
        scabbard scaffold scald scallop scalp scamp scamper scant
        scapegoat scathe scavenge scepter scheme schism scoff
        sconce scone scoot scope scorch scour scourge scowl
        scram scramble scrawl scrawny screech scribe scrimp
        script scrounge scrunch scuff scuffle scull scum scurry
        scuttle seafarer sear sect sedan sedate sediment seduce
        seep seesaw seethe seldom serene serf serrated shack
        shackle shad shag shale shamble shank shanty shard shave
        shawl sheaf shears sheath shin shingle shirk shoal shod
        shoddy shone shoo shove shovel shred shrewd shrill shun
        shunt sibling sidle siege sieve sift silt simmer simper
        sinewy sinister sip sire sizzle skeptic skewer skid skiff
        skim skimp skip skit skulk slack slake slat slate slay
        sled sleek sleet slew slick slink slit sliver slob slosh
        slot slouch slough sludge slug sluice slum slumber slur
        slush sly smack smear smirk smite smock smog smolder
        smother smudge smug snag snare snarl sneer snicker snide
        snip snippet snob snore snort snout snub snug soggy
        sojourn solace solder sole solstice somber soot soothe
        sop sordid sorely sow spade spangle spaniel spank sparse
        spasm spat spate spatula speck sped spelt spew spигot
        spindle spinster spire spittle splay spleen splice splint
        spook spool spout sprig sprightly spruce spry spud spume
        spunk sputter squabble squalid squall squander squeak
        squeal squid squint squire squirm squirt stagger staid
        stake stalemate stallion stammer stampede stanza starboard
        stately statute staunch stave stead steed steep steeple
        steer stench stencil sterile stifle stigma stile stilt
        stint stipend stoic stoke stomp stout stow straddle
        straggle strangle stratum strut stud stupor stutter sty
        suave subside subtle succinct sueде sulk sullen sultry
        sumptuous sunder sundry surly surmise surpass swab
        swagger swath swatch sway swerve swine swipe swirl swish
        swoon swoop tabby tableau tact tadpole taffy tag tale
        talon tandem tang tangible tangy tanner taper tarnish
        tarp tarry tat taut tavern tawny teal teem teeter tempest
        tempo tenet tepid terse tether thatch thee thence thicket
        thimble thine thistle thong thorny thresh throb throng
        thud thug thwart tiara tidbit tidy tiff tike tiller tingle
        tipsy tirade tithe toad toil token tonic topaz topple
        torment torrent torrid tote totter tout trachea tract
        tram trample trawl tread treble trek trellis tremor
        trespass tress trestle trifle trill trinket tripe trite
        trod troll trot trough trounce troupe trowel truant
        trudge tryst tuck tuft tug tumult tundra turmoil turnip
        turret tusk tussle tutu twang tweed twine twinge twirl
        twitch tyke udder ulcer umber uncanny uncouth unction
        undue unfit unkempt unruly unwind upend uproar upturn
        urchin urn usher usurp uterus vacate vagrant vale valve
        vane vanquish vantage varnish vat vault vaunt veal veer
        vellum velour veneer vengeance venison verbose verve
        vestige vex vial vicar vie vigor vile vilify vim viper
        visage viscous vise vista vixen vole volt voluble voracious
        vortex vouch vulgar wad waddle wade wafer waffle waft wag
        wager wail waive wallow wan wand wane wangle warble warp
        wary watt waver wax waylay wean weasel weir welt wend
        wharf wheedle whet whiff whim whinny whisk whit whittle
        whiz whorl wick wicker widget wield wig wiggle wilt wily
        wimp wince wisp wistful wither wobble woe wok wont woo
        worsen wrangle wrath wreak wreath wrest wretch wring wry
        yak yam yank yap yearling yelp yen yew yip yodel yoke
        yonder yore zany zap zest zinc zing zit
    """,
    3.0: """
        abet addle aft agog ait alb ana anode apse awl balky bock bract
        brig cairn chump chum cleat coif cowl crick dace dado dank darn
        dint dobbin doff dolt doss dram dray dross ebbing eft egad emu
        epee erg ewer fen fez fie flan flub fop fro gad gam gar gee
        ghee gib gid gimp gnu gob goatee grue gull hadj hale hasp heft
        hob hod hoe hump ibex ibis imp inkling jape jell jibe jo jut
        kale kapok keelson ken kepi kine knell lea lee li lieu lii loch
        lug lye mead meed mho mib mim moil mote mow nab nae neap nib
        nil nim nix nob nog noil nonce ort pap pas pate paten pawl pax
        peen pelf pend pent pep per pewter phial pica pice pied pis
        plat plie pock poi pol pone pony pood pree prig prim pro pub
        pud pug puke pul pung punk pur pus put pyx quad quern quid
        quin quire rand ret rho rig rill rime roc roe rot rove rue
        rum run rut rye sac sal sard scud scup sec sen ser shim shiv
        sib sic silo sim sin sip sis ska skep skua sloe slub smut
        snit sod sol son sop sot sou soy spa spitz stoa stob stye
        sub sud sup syn tab tad taj tam tare tarn tat tau taw ted
        teg tel tensor tern tet thews tho thrum tic til tit tod tog
        tom ton top tor tot trow tsar tub tun tup tut twee two tyke
        udo ugh ulna unbar untie urea urus uta vac vang vaw veg vet
        vig vim viz vow wab wad wae wap wat waw wen wey wha whid
        whin who whop wig win wis wit wiz woad wolds wot wow wyn
        xyst yaw yid yin yip yob yod yon you yow yup zag zax zed
        zee zek zig zip zoa
    """,
}

# Words any Block Words player leans on; pinned at their own zipf values so
# fixture scenarios behave sensibly regardless of band membership above.
PINNED: dict[str, float] = {
    "make": 5.9, "take": 5.75, "made": 5.4, "most": 5.2, "must": 5.2,
    "makes": 5.35, "maker": 4.3, "makers": 4.15, "makeup": 4.4, "remake": 3.7,
    "taken": 5.2, "takes": 5.25, "intake": 4.0, "mistake": 4.5, "retake": 3.2,
    "other": 5.4, "mother": 5.0, "come": 5.3, "some": 5.4, "home": 5.1,
    "fake": 4.3, "sake": 4.2, "stake": 4.0, "steak": 4.2, "skate": 4.0,
    "teak": 3.3, "mate": 4.4, "meat": 4.6, "team": 4.9, "tame": 3.9,
    "fate": 4.4, "feat": 4.0, "feast": 4.2, "east": 4.8, "seat": 4.7,
    "fast": 5.0, "mast": 3.6, "task": 4.7, "same": 5.3, "seam": 3.5,
    "fame": 4.3, "mask": 4.3, "steam": 4.4, "meats": 3.6, "mats": 3.6,
    "pink": 4.6, "pin": 4.5, "tip": 4.6, "tin": 4.3, "kit": 4.4,
    "ink": 4.0, "kin": 3.8, "knit": 3.7, "nit": 3.0, "nip": 3.4,
    "pint": 4.0, "pit": 4.2, "pity": 4.3, "tiny": 4.7,
    "atom": 4.0, "custom": 4.4, "atoms": 3.8, "customs": 4.0,
    "them": 5.5, "theme": 4.4, "those": 5.3, "house": 5.2, "mouse": 4.4,
    "south": 4.9, "shout": 4.3, "mouth": 4.6, "touch": 4.7, "much": 5.4,
    "court": 4.8, "chart": 4.3, "charm": 4.1, "march": 4.5, "match": 4.7,
    "chest": 4.3, "chase": 4.3, "chose": 4.4, "chaos": 4.1, "ache": 3.9,
    "teach": 4.6, "reach": 4.8, "roach": 3.3, "coach": 4.5, "couch": 4.1,
    "actor": 4.4, "actors": 4.1, "roast": 4.0, "coast": 4.5, "toast": 4.1,
    "score": 4.6, "shore": 4.3, "chore": 3.7, "chores": 3.5, "horse": 4.7,
    "short": 5.2, "shot": 4.8, "sort": 4.8, "hurt": 4.7, "hours": 4.8,
    "hour": 4.8, "sour": 4.0, "tour": 4.4, "cause": 4.8, "course": 5.1,
    "drain": 4.0, "drains": 3.6, "rain": 4.8, "rains": 4.0, "raid": 4.1,
    "raids": 3.7, "spider": 4.1, "spread": 4.6, "pride": 4.4, "praise": 4.2,
    "praised": 3.8, "pains": 3.9, "pairs": 4.2, "aspire": 3.6, "diaper": 3.6,
    "rapid": 4.2, "drape": 3.3, "pander": 3.1, "sandier": 2.8,
    "sardine": 3.4, "snider": 2.4, "dip": 4.0, "rip": 4.0,
    "sip": 3.9, "pie": 4.3, "pies": 3.9, "side": 5.0, "ride": 4.6,
    "rides": 4.0, "dine": 3.9, "diner": 3.8, "dries": 3.5, "snide": 3.1,
    "jump": 4.6, "hump": 3.2, "bump": 4.0, "chump": 2.8, "chum": 3.0,
    "lump": 3.8, "dump": 4.1, "pump": 4.2, "hub": 3.9, "cub": 3.7,
    "cup": 4.6, "pub": 4.2, "hum": 3.8, "bum": 3.7, "chub": 2.5,
    "aft": 3.0, "raft": 3.8, "after": 5.6, "fear": 4.7, "tear": 4.3,
    "rate": 4.8, "fare": 4.1, "fret": 3.5, "tare": 2.8, "fart": 3.6,
    "wizard": 4.0, "wizards": 3.6, "ward": 4.2, "wards": 3.5, "draw": 4.6,
    "draws": 4.0, "wise": 4.5, "wiser": 3.8, "rise": 4.6, "raise": 4.6,
    "raised": 4.4, "aside": 4.4, "wear": 4.6, "dear": 4.6, "read": 5.1,
    "dare": 4.2, "wade": 3.5, "wader": 2.6, "wide": 4.7, "wider": 4.2,
    "weird": 4.4, "wired": 3.9, "wires": 3.9, "wards": 3.5,
    "banish": 3.2, "bash": 3.6, "bath": 4.5, "bathe": 3.6, "basin": 3.8,
    "saint": 4.3, "stain": 3.9, "habit": 4.3, "beast": 4.2, "absent": 4.1,
    "shine": 4.3, "hint": 4.2, "hints": 3.9, "than": 5.5, "then": 5.6,
    "ten": 4.9, "tan": 4.1, "ban": 4.2, "bin": 4.0, "bit": 4.9,
    "bat": 4.3, "bet": 4.4, "net": 4.5, "nest": 4.1, "best": 5.2,
    "sent": 4.8, "bent": 4.1, "bites": 3.8, "baths": 3.7, "thin": 4.4,
    "song": 4.8, "gone": 4.9, "goes": 4.9, "ages": 4.4, "gate": 4.4,
    "gates": 4.1, "goat": 4.0, "goats": 3.7, "sage": 3.9, "stage": 4.7,
    "stone": 4.6, "tones": 3.9, "notes": 4.6, "onset": 3.9, "agents": 4.3,
    "tongs": 3.2, "snag": 3.5, "nags": 2.8, "gents": 3.2, "stag": 3.4,
    "plane": 4.6, "planes": 4.2, "plan": 5.0, "plans": 4.7, "lane": 4.2,
    "lanes": 3.8, "pale": 4.2, "pales": 3.0, "sail": 4.2, "nail": 4.1,
    "nails": 3.9, "snail": 3.6, "plaid": 3.5, "spaniel": 3.2, "island": 4.6,
    "plead": 3.7, "pleads": 3.2, "panel": 4.3, "panels": 4.0, "penal": 3.5,
    "spine": 3.9, "spinal": 3.7, "lines": 4.6, "slide": 4.2, "ideas": 4.7,
    "ideal": 4.4, "alpine": 3.7, "plains": 3.8, "sandal": 3.5,
    "forest": 4.4, "rest": 4.8, "rose": 4.6, "store": 4.8, "storm": 4.4,
    "foam": 3.9, "form": 4.9, "format": 4.2, "farm": 4.5, "dream": 4.7,
    "dreams": 4.5, "master": 4.6, "stream": 4.3, "roams": 2.9, "toads": 3.2,
    "fares": 3.5, "foams": 2.7, "frost": 4.0, "fort": 4.1, "forts": 3.3,
    "sofa": 3.9, "soft": 4.6, "softer": 3.6, "modest": 4.0, "sorted": 3.9,
    "crane": 3.8, "cane": 3.8, "care": 5.0, "race": 4.7, "acre": 3.8,
    "bane": 3.4, "bran": 3.5, "barn": 4.0, "bear": 4.5, "bean": 4.0,
    "bare": 4.2, "brace": 3.7, "brane": 2.0, "nacre": 2.2, "crab": 3.9,
    "carb": 3.3, "cab": 4.0, "nab": 3.3, "ace": 4.0, "can": 5.6,
    "born": 4.9, "baron": 3.8, "roan": 2.8, "boar": 3.4, "bar": 4.6,
    "nor": 4.8, "ran": 4.8, "rob": 4.1, "orb": 3.3, "oar": 3.3,
    "bra": 3.8, "ban": 4.2, "bon": 3.0, "nob": 2.4, "brown": 4.6,
    "candle": 4.0, "candles": 3.8, "dance": 4.6, "dances": 4.0,
    "lance": 3.6, "clean": 4.7, "clan": 3.8, "clans": 3.4, "cans": 3.9,
    "dens": 3.3, "lens": 3.9, "sand": 4.4, "land": 4.8, "lands": 4.2,
    "scale": 4.4, "laced": 3.3, "decal": 3.1, "uncle": 4.4, "uncles": 3.6,
    "clause": 3.9, "sauce": 4.2, "cause": 4.8, "clue": 4.1, "clues": 3.8,
    "dunes": 3.3, "nudes": 3.0, "ascend": 3.5, "dulcet": 2.6, "cradle": 3.8,
    "carpet": 4.0, "carpets": 3.5, "crate": 3.6, "crates": 3.3,
    "caters": 3.0, "react": 4.2, "trace": 4.2, "traces": 3.8, "pace": 4.2,
    "pact": 3.8, "part": 5.1, "pear": 3.9, "reap": 3.5, "tape": 4.3,
    "taper": 3.2, "paste": 3.9, "caper": 3.1, "capers": 2.8, "carts": 3.5,
    "scrape": 3.7, "aspect": 4.2, "crepe": 3.3, "carat": 3.1,
    "her": 6.0, "here": 5.5, "hers": 4.3, "three": 5.2, "there": 5.6,
    "ether": 3.5, "otter": 3.4, "otters": 3.0,
    "more": 5.6, "ore": 3.6, "tore": 3.9, "route": 4.3,
    "chrome": 3.9, "homes": 4.3, "shame": 4.2, "charts": 3.8,
    "hamster": 3.6, "hamsters": 3.3,
}


def band_words() -> dict[str, float]:
    out: dict[str, float] = {}
    for zipf in sorted(BANDS):
        for raw in BANDS[zipf].split():
            word = raw.strip().lower()
            if (
                3 <= len(word) <= 8
                and word.isascii()
                and word.isalpha()
                and word.islower()
            ):
                out[word] = max(out.get(word, 0.0), zipf)
    for word, zipf in PINNED.items():
        word = word.strip().lower()
        if 3 <= len(word) <= 8 and word.isascii() and word.isalpha():
            out[word] = zipf
    return out


def main() -> None:
    words = band_words()
    root = Path(__file__).resolve().parent.parent
    dest = root / "src" / "blockwords" / "data" / "words.tsv"
    lines = ["# bundled dictionary: word<TAB>frequency (fraction of tokens)"]
    for word in sorted(words):
        freq = 10 ** (words[word] - 9.0)
        lines.append(f"{word}\t{freq:.6g}")
    dest.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(words)} words to {dest}")


if __name__ == "__main__":
    main()
